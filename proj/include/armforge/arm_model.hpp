#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "armforge/errors.hpp"
#include "armforge/math3d.hpp"
#include "armforge/units.hpp"

namespace armforge::model {

// I-shaped cross section, dimensions per flange/web rectangle.
struct IBeamSection {
    double flange_width_top = 0.0;     // b1, m
    double flange_height_top = 0.0;    // h1, m
    double web_width = 0.0;            // b2, m
    double web_height = 0.0;           // h2, m
    double flange_width_bottom = 0.0;  // b3, m
    double flange_height_bottom = 0.0; // h3, m

    double total_height() const { return flange_height_top + web_height + flange_height_bottom; }

    double area() const {
        return flange_width_top * flange_height_top + web_width * web_height +
               flange_width_bottom * flange_height_bottom;
    }
};

struct MaterialSpec {
    std::string name;
    double density = 0.0;             // kg/m^3
    double flexural_strength = 0.0;   // Pa
    double material_cost_score = 0.0; // 0-10 trade-study score
    double machining_cost_score = 0.0;
};

enum class MotorKind { servo, stepper };

struct MotorSpec {
    std::string name;
    MotorKind kind = MotorKind::servo;
    double mass = 0.0;              // kg
    double stall_torque = 0.0;      // N*m
    double rated_speed = 0.0;       // rad/s
    double operating_voltage = 0.0; // V
    int steps_per_rev = 0;          // stepper only, 0 for servo
    double current_draw = 0.0;      // A
};

struct LinkSpec {
    std::string name;
    double length = 0.0; // m
    double mass = 0.0;   // kg
    IBeamSection cross_section;
    MaterialSpec material;
    // Where the link's mass acts, as a fraction of length from the proximal
    // end. 0.5 = uniform-density midpoint.
    double centroid_fraction = 0.5;
};

enum class JointKind { full_revolute, half_joint };

struct JointSpec {
    std::string name;
    JointKind kind = JointKind::full_revolute;
    Vec3 axis{0.0, 0.0, 1.0}; // unit vector in the parent link frame
    double limit_min = 0.0;   // rad
    double limit_max = 0.0;   // rad
    MotorSpec motor;
};

enum class GripperKind { two_finger, vacuum };

struct GripperSpec {
    std::string name;
    GripperKind kind = GripperKind::two_finger;
    double mass = 0.0; // kg, actuator included
};

// Serial chain description. Two topologies are accepted:
//   links == joints + 1 : links[0] is rigidly attached to the mount and the
//                          chain alternates link, joint, link, ...
//   links == joints     : each joint is followed by its link.
struct ArmSpec {
    std::string name;
    std::vector<LinkSpec> links;
    std::vector<JointSpec> joints;
    GripperSpec gripper;
    Pose base_mount;
    double payload_mass = 0.0; // kg, rated payload at the end effector

    // 1 when a leading mount-fixed link is present, else 0.
    std::size_t leading_links() const {
        return links.size() == joints.size() + 1 ? 1u : 0u;
    }

    double total_length() const {
        double sum = 0.0;
        for (const LinkSpec& link : links) sum += link.length;
        return sum;
    }
};

// Planar mobility count over links and full/half joints. A non-positive
// result is a valid answer (overconstrained mechanism), not an error.
inline int gruebler_dof(int links, int full_joints, int half_joints) {
    if (links < 1) throw DomainError("gruebler_dof: links must be >= 1");
    if (full_joints < 0 || half_joints < 0)
        throw DomainError("gruebler_dof: joint counts must be >= 0");
    return 3 * (links - 1) - 2 * full_joints - half_joints;
}

struct Violation {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline void check_positive(ValidationReport& report, const std::string& field, double value) {
    if (!(value > 0.0)) report.violations.push_back({field, "must be > 0"});
}

inline void check_non_negative(ValidationReport& report, const std::string& field, double value) {
    if (!(value >= 0.0)) report.violations.push_back({field, "must be >= 0"});
}

} // namespace detail

// Structural checks on an ArmSpec. Violations are data, not exceptions;
// an empty report means every downstream operation accepts the spec.
inline ValidationReport validate_arm(const ArmSpec& spec) {
    ValidationReport report;
    using detail::check_non_negative;
    using detail::check_positive;

    if (spec.links.empty()) report.violations.push_back({"links", "at least one link required"});
    if (spec.joints.empty()) report.violations.push_back({"joints", "at least one joint required"});
    if (spec.links.size() != spec.joints.size() && spec.links.size() != spec.joints.size() + 1)
        report.violations.push_back(
            {"links/joints", "link count must equal joint count or joint count + 1"});

    for (std::size_t i = 0; i < spec.links.size(); ++i) {
        const LinkSpec& link = spec.links[i];
        const std::string tag = "links[" + std::to_string(i) + "]";
        check_positive(report, tag + ".length", link.length);
        check_non_negative(report, tag + ".mass", link.mass);
        if (link.centroid_fraction < 0.0 || link.centroid_fraction > 1.0)
            report.violations.push_back({tag + ".centroid_fraction", "must be in [0, 1]"});
        check_positive(report, tag + ".cross_section.flange_width_top", link.cross_section.flange_width_top);
        check_positive(report, tag + ".cross_section.flange_height_top", link.cross_section.flange_height_top);
        check_positive(report, tag + ".cross_section.web_width", link.cross_section.web_width);
        check_positive(report, tag + ".cross_section.web_height", link.cross_section.web_height);
        check_positive(report, tag + ".cross_section.flange_width_bottom", link.cross_section.flange_width_bottom);
        check_positive(report, tag + ".cross_section.flange_height_bottom", link.cross_section.flange_height_bottom);
        check_positive(report, tag + ".material.density", link.material.density);
        check_positive(report, tag + ".material.flexural_strength", link.material.flexural_strength);
    }

    for (std::size_t i = 0; i < spec.joints.size(); ++i) {
        const JointSpec& joint = spec.joints[i];
        const std::string tag = "joints[" + std::to_string(i) + "]";
        if (!(joint.limit_min < joint.limit_max))
            report.violations.push_back({tag + ".limits", "degenerate joint range (min must be < max)"});
        if (std::abs(joint.axis.norm() - 1.0) > 1e-9)
            report.violations.push_back({tag + ".axis", "must have unit norm"});
        if (joint.motor.name.empty())
            report.violations.push_back({tag + ".motor", "joint has no motor"});
        check_positive(report, tag + ".motor.stall_torque", joint.motor.stall_torque);
        check_positive(report, tag + ".motor.rated_speed", joint.motor.rated_speed);
        check_non_negative(report, tag + ".motor.mass", joint.motor.mass);
    }

    check_non_negative(report, "gripper.mass", spec.gripper.mass);
    check_non_negative(report, "payload_mass", spec.payload_mass);
    if (std::abs(spec.base_mount.orientation.norm() - 1.0) > 1e-9)
        report.violations.push_back({"base_mount.orientation", "must be a unit quaternion"});

    return report;
}

// Torque a motor can deliver at a given shaft speed. Piecewise-linear curves:
// steppers derate linearly from stall torque at rest to zero at rated speed;
// servos hold stall torque through 0.8x rated speed, then fall linearly to
// zero. Zero at and beyond rated speed for both kinds.
inline double motor_torque_available(const MotorSpec& motor, double speed) {
    if (speed < 0.0) throw DomainError("motor_torque_available: speed must be >= 0");
    if (speed >= motor.rated_speed) return 0.0;
    if (motor.kind == MotorKind::stepper) {
        return motor.stall_torque * (1.0 - speed / motor.rated_speed);
    }
    const double knee = 0.8 * motor.rated_speed;
    if (speed <= knee) return motor.stall_torque;
    return motor.stall_torque * (motor.rated_speed - speed) / (motor.rated_speed - knee);
}

} // namespace armforge::model
